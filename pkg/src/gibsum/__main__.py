"""Module entry point: python -m gibsum ..."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
