"""sepscan command-line entry point."""

import logging

from sepscan.cli import main
from sepscan.configs.settings import settings

# Configure logging
logging.basicConfig(level=settings.log_level)
logger = logging.getLogger(__name__)

if __name__ == "__main__":
    raise SystemExit(main())
