import sys

from owlet.cli import main

sys.exit(main())
