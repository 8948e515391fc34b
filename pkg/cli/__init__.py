"""
Command-line interface: `python -m cli` or the `cli.main:cli` click group
"""
