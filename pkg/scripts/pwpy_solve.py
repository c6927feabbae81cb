#!/bin/python3
"""
Script that solves a problem on a graph or grid instance. Same arguments as the pwpy command
"""

import sys

from pwpy.cli import main

if __name__ == "__main__":
    sys.exit(main())
