import os
import sys

# make the sibling oracles module importable from every test file
sys.path.insert(0, os.path.dirname(__file__))
