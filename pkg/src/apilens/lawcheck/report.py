"""Plain-text and JSON renderings of law reports."""

from __future__ import annotations

import json
from typing import Iterable

from .laws import LawReport


def summary(reports: Iterable[LawReport]) -> dict:
    reports = list(reports)
    failed = [r for r in reports if not r.passed]
    return {
        "reports": len(reports),
        "failed": len(failed),
        "checked": sum(r.checked for r in reports),
    }


def to_text(reports: Iterable[LawReport]) -> str:
    reports = list(reports)
    lines = [r.line() for r in reports]
    s = summary(reports)
    lines.append(f"{s['reports'] - s['failed']}/{s['reports']} laws hold ({s['checked']} cases)")
    return "\n".join(lines) + "\n"


def to_json(reports: Iterable[LawReport], **meta) -> str:
    reports = list(reports)
    doc = {"meta": meta, "summary": summary(reports), "reports": [r.to_dict() for r in reports]}
    return json.dumps(doc, indent=2, sort_keys=True)


def write_report(reports: Iterable[LawReport], path: str, **meta) -> None:
    """Write JSON when ``path`` ends in ``.json``, text otherwise."""
    reports = list(reports)
    text = to_json(reports, **meta) if path.endswith(".json") else to_text(reports)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
