# coding=utf-8
"""
Support for: python -m knotradar
"""

from knotradar.cli import main

if __name__ == "__main__":
    main()
