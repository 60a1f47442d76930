"""
Claim report records for the Winger verifier.
Handles building, serializing and saving claim reports.
"""
import json
import os

from .helpers import VERSION, to_jsonable

STATUSES = ("pass", "fail", "skipped")


class ClaimRecord:
    def __init__(self, claim_id, description, status, witness, millis=0, group=""):
        if status not in STATUSES:
            raise ValueError(f"unknown claim status {status!r}")
        if status == "pass" and witness in (None, "", [], {}):
            raise ValueError(f"claim {claim_id} passed without a witness")
        self.id = claim_id
        self.description = description
        self.status = status
        self.witness = witness
        self.millis = millis
        self.group = group

    def to_dict(self):
        return {
            "id": self.id,
            "description": self.description,
            "status": self.status,
            "witness": to_jsonable(self.witness),
            "millis": self.millis,
        }


class ClaimReport:
    def __init__(self, convention, version=VERSION):
        self.version = version
        self.convention = convention
        self.claims = []
        self.metadata = {}

    def add(self, record):
        if any(existing.id == record.id for existing in self.claims):
            raise ValueError(f"duplicate claim id {record.id}")
        self.claims.append(record)
        return record

    def get(self, claim_id):
        return next((c for c in self.claims if c.id == claim_id), None)

    def counts(self):
        counts = {status: 0 for status in STATUSES}
        for record in self.claims:
            counts[record.status] += 1
        return counts

    def failed(self):
        return [c for c in self.claims if c.status == "fail"]

    def exit_code(self):
        """0 when no claim failed, 1 otherwise."""
        return 1 if self.failed() else 0

    def to_dict(self):
        data = {
            "version": self.version,
            "convention": self.convention,
            "claims": [c.to_dict() for c in self.claims],
        }
        if self.metadata:
            data["metadata"] = to_jsonable(self.metadata)
        return data

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)


def save_report(report, path):
    """Write the report as JSON, creating the parent directory if needed."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(report.to_json())
        f.write("\n")


def load_report(path):
    """Raw report dict from a JSON file, or {} if it is missing or unreadable."""
    if not os.path.exists(path):
        return {}
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except (json.JSONDecodeError, FileNotFoundError):
        return {}
