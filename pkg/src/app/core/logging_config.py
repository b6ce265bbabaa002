import sys
import os
from typing import Optional
from loguru import logger
from config.settings import settings

def setup_logging(
    level: Optional[str] = None,
    log_dir: Optional[str] = None,
    to_file: Optional[bool] = None
):
    """
    Configures the application logging using Loguru.
    Removes default handlers and adds structured sinks for different log types.

    Args:
        level: Overrides settings.LOG_LEVEL
        log_dir: Overrides settings.LOG_DIR
        to_file: Overrides settings.LOG_TO_FILE; False keeps only the console sink
    """
    level = level or settings.LOG_LEVEL
    log_dir = log_dir or settings.LOG_DIR
    to_file = settings.LOG_TO_FILE if to_file is None else to_file

    # Remove default handler
    logger.remove()

    # --- Console Sink ---
    logger.add(
        sys.stderr,
        level=level,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>",
        colorize=True
    )

    if not to_file:
        logger.debug("Logging initialized (console only). Level: {}", level)
        return logger

    os.makedirs(log_dir, exist_ok=True)

    # --- File Sinks ---

    # 1. Main Application Log
    logger.add(
        os.path.join(log_dir, "app.log"),
        level=level,
        rotation="50 MB",
        retention=f"{settings.LOG_RETENTION_DAYS} days",
        format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}",
        compression="zip"
    )

    # 2. Optimizer Progress Log
    # Receives records bound with logger.bind(type="optimizer")
    logger.add(
        os.path.join(log_dir, "optimizer.log"),
        filter=lambda record: "optimizer" in record["extra"].get("type", "").lower(),
        level="DEBUG",
        rotation="50 MB",
        retention=f"{settings.LOG_RETENTION_DAYS} days",
        format="{time:YYYY-MM-DD HH:mm:ss} | PSO | {message}",
        compression="zip"
    )

    # 3. Error Log (Errors only)
    logger.add(
        os.path.join(log_dir, "errors.log"),
        level="ERROR",
        rotation="50 MB",
        retention=f"{settings.LOG_RETENTION_DAYS} days",
        format="{time:YYYY-MM-DD HH:mm:ss} | {level} | {name}:{function}:{line} - {message}",
        backtrace=True,
        diagnose=False,
        compression="zip"
    )

    logger.info(f"Logging initialized. Level: {level}, Dir: {log_dir}")

    return logger
