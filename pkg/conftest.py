import sys
from pathlib import Path

# tests import the package as src.<module>
sys.path.insert(0, str(Path(__file__).parent))
