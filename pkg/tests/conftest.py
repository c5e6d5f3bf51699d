import sys
from pathlib import Path

# make anchors.py importable regardless of the pytest rootdir
sys.path.insert(0, str(Path(__file__).parent))
