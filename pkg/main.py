#!/usr/bin/env python3
"""
Main entry point for the fivec command line.
"""

import sys
from dotenv import load_dotenv

# Load environment variables before settings are read
load_dotenv()

from src.cli.parser import run

if __name__ == "__main__":
    sys.exit(run())
