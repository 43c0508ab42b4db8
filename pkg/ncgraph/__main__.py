import sys

from ncgraph.main import main

sys.exit(main())
