"""
hensched - command-line entry point.

    python main.py simulate --scenario data/scenarios/scenario_11he.json \
        --intervals "16,23,28,9,5,9,28,5,9,5,24" --out runs/table1
    python main.py optimize --particles 30 --iterations 100 --seed 42 --out runs/pso
    python main.py report --in runs/pso --plot
"""

import sys
from pathlib import Path

# Add project root to path for imports
sys.path.insert(0, str(Path(__file__).parent))

from src.app.cli.commands import main


if __name__ == "__main__":
    sys.exit(main())
