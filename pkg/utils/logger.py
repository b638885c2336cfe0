import logging
import os
from logging.handlers import RotatingFileHandler

from utils.config_loader import config

LOG_FILE = config.get("logging", "file", default="./logs/hybrid_tucker.log")
LOG_LEVEL = str(config.get("logging", "level", default="INFO")).upper()

log_dir = os.path.dirname(LOG_FILE)
if log_dir and not os.path.exists(log_dir):
    os.makedirs(log_dir, exist_ok=True)

logger = logging.getLogger("hybrid_tucker")
logger.setLevel(logging.DEBUG)  # Capture all levels

if not logger.handlers:
    # Rotating file handler (5 MB per file, keep 3 backups)
    file_handler = RotatingFileHandler(LOG_FILE, maxBytes=5 * 1024 * 1024, backupCount=3)
    file_handler.setLevel(logging.DEBUG)

    console_handler = logging.StreamHandler()
    console_handler.setLevel(getattr(logging, LOG_LEVEL, logging.INFO))

    formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    file_handler.setFormatter(formatter)
    console_handler.setFormatter(formatter)

    logger.addHandler(file_handler)
    logger.addHandler(console_handler)
