import sys

from multiutility.cli import main

sys.exit(main())
