"""Run the command line front end: python -m berger_eta."""

from berger_eta.cli.app import main

if __name__ == "__main__":
    raise SystemExit(main())
