import sys

from nlrewrite.cli.main import main

sys.exit(main())
