import json
import os
import sys
import time
import uuid
from typing import Any, Dict

# stdout carries results only; events go to stderr when enabled
ENABLED = os.environ.get("CRYSTAL_EVENTS", "") not in ("", "0")


def set_enabled(flag: bool) -> None:
    global ENABLED
    ENABLED = flag


def emit(event_type: str, payload: Dict[str, Any]) -> None:
    if not ENABLED:
        return
    request_id = uuid.uuid4().hex[:8]
    event = {
        "request_id": request_id,
        "event": event_type,
        "timestamp": time.ctime(),
        **payload,
    }
    print(json.dumps(event, ensure_ascii=False, default=str), file=sys.stderr)
