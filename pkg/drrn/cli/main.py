"""
Main entry point for the DRRN CLI.
"""
from drrn.cli.commands import app

if __name__ == "__main__":
    app()
