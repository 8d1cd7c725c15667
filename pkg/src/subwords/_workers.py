import os


def worker_count() -> int:
    """Worker hint from SUBWORD_THREADS; 1 (serial) when unset or invalid."""
    try:
        return max(1, int(os.environ.get("SUBWORD_THREADS", "1")))
    except ValueError:
        return 1
