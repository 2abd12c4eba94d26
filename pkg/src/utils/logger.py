import logging
from datetime import datetime
from pathlib import Path
from typing import Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logger(name: str, level: int = logging.INFO) -> logging.Logger:
    """
    Set up a named logger with a single console handler.

    Args:
        name (str): Logger name, usually the owning class name
        level (int): Logging level

    Returns:
        logging.Logger: Configured logger
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)

    if not logger.handlers:
        handler = logging.StreamHandler()
        formatter = logging.Formatter(LOG_FORMAT)
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    return logger


def setup_pipeline_logger(logs_dir: Optional[str] = 'logs',
                          level: str = 'INFO',
                          log_file: str = 'wrightlab.log',
                          fmt: str = LOG_FORMAT) -> logging.Logger:
    """
    Set up the command-line logger with console and file handlers.

    The file name gets a timestamp before its suffix, e.g.
    wrightlab_20240611_120000.log.

    Args:
        logs_dir (Optional[str]): Directory for log files, None disables the file handler
        level (str): Console level name
        log_file (str): Base name of the log file
        fmt (str): Format of file records

    Returns:
        logging.Logger: Configured logger
    """
    logger = logging.getLogger('WrightLabPipeline')
    logger.setLevel(logging.DEBUG)

    if not logger.handlers:
        console_handler = logging.StreamHandler()
        console_handler.setLevel(getattr(logging, str(level).upper(), logging.INFO))
        console_handler.setFormatter(logging.Formatter('%(levelname)s - %(message)s'))
        logger.addHandler(console_handler)

        if logs_dir:
            log_dir = Path(logs_dir)
            log_dir.mkdir(parents=True, exist_ok=True)
            base = Path(log_file)
            timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
            file_handler = logging.FileHandler(log_dir / f"{base.stem}_{timestamp}{base.suffix or '.log'}")
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(logging.Formatter(fmt))
            logger.addHandler(file_handler)

    return logger
