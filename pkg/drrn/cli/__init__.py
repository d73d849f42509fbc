"""
Command-line interface package for DRRN text games.
"""
from drrn.cli.commands import app as drrn_app
