import sys
import os

sys.path.append(os.path.abspath(os.path.dirname(__file__)))
from stoimenow import cli


if __name__ == '__main__':
    cli.main()
