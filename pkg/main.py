import sys

from src.cli.parser import main

if __name__ == "__main__":
    sys.exit(main())
