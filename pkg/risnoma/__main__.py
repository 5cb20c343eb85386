"""Entry point for python -m risnoma."""
from risnoma.cli import app

if __name__ == "__main__":
    app()
