"""Utility script to run the acceptance sweeps outside of the CLI.

Run via cron or manually:
    python run_suite.py            # every sweep
    python run_suite.py lemma6     # one sweep
"""

import logging
import os
import sys

BASE_DIR = os.path.dirname(os.path.abspath(__file__))
if BASE_DIR not in sys.path:
    sys.path.insert(0, BASE_DIR)

os.environ.setdefault('ENVIRONMENT', 'production')

from cli import configure_logging
from services.suite import SUITES, run_all

logger = logging.getLogger(__name__)


def main(mode='all') -> int:
    """Run one sweep (or all of them) and log every failing instance."""
    configure_logging()
    try:
        result = run_all() if mode == 'all' else SUITES[mode]()
        logger.info(result['details'])
        for failure in result.get('failures', []):
            logger.error("  %s", failure)
        for name, sub in result.get('results', {}).items():
            for failure in sub.get('failures', []):
                logger.error("  %s: %s", name, failure)
    except Exception:
        logger.exception("Acceptance sweep %s failed", mode)
        raise
    return 0 if result['status'] == 'ok' else 3


if __name__ == "__main__":
    sys.exit(main(sys.argv[1] if len(sys.argv) > 1 else 'all'))
