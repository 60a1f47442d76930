"""
Helper utilities and constants for the Winger verifier.
"""
import platform
import sys
from fractions import Fraction

import psutil

VERSION = "1.0.0"

STATUS_ICONS = {"pass": "✅", "fail": "❌", "skipped": "⏭️"}

_quiet = False


def set_quiet(value):
    global _quiet
    _quiet = bool(value)


def log(message, icon="🔍"):
    """Progress line on stderr; silenced by --quiet."""
    if not _quiet:
        print(f"{icon} {message}", file=sys.stderr)


def warn(message):
    print(f"⚠️ {message}", file=sys.stderr)


def error(message):
    print(f"❌ {message}", file=sys.stderr)


def to_jsonable(value):
    """Exact values as strings, containers recursively; plain JSON types unchanged."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    if hasattr(value, "to_strings"):
        return value.to_strings()
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    return str(value)


def format_millis(seconds, record=True):
    return int(round(seconds * 1000)) if record else 0


def format_witness(witness, width=72):
    text = witness if isinstance(witness, str) else _compact(to_jsonable(witness))
    return text if len(text) <= width else text[: width - 3] + "..."


def _compact(value):
    if isinstance(value, dict):
        return ", ".join(f"{k}={_compact(v)}" for k, v in value.items())
    if isinstance(value, list):
        return "[" + ", ".join(_compact(v) for v in value) + "]"
    return str(value)


def render_report(report):
    """Plain-text claim table grouped by subcommand: title, one line per claim, footer."""
    lines = [f"Winger verifier {report.version} (composition {report.convention})"]
    current = None
    for record in report.claims:
        if record.group != current:
            current = record.group
            lines.append("")
            lines.append(f"[{current}]")
        icon = STATUS_ICONS.get(record.status, "?")
        lines.append(f"  {icon} {record.id:<34} {format_witness(record.witness)}")
    counts = report.counts()
    lines.append("")
    lines.append(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
    return "\n".join(lines)


def process_stats():
    """Python version and resident memory, as the bot's info command reported them."""
    process = psutil.Process()
    memory_mb = process.memory_info().rss / 1024 / 1024
    return {
        "python": platform.python_version(),
        "platform": platform.system(),
        "rss_mb": round(memory_mb, 1),
    }


def format_duration(seconds):
    minutes, secs = divmod(int(seconds), 60)
    hours, minutes = divmod(minutes, 60)
    return f"{hours}h {minutes}m {secs}s"
