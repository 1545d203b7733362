"""Main entry point for ``python -m pickspace``."""

from pickspace.cli import main

if __name__ == "__main__":
    main()
