"""Report document: fixed key set, JSON-plain values, lossless round trip."""

from dataclasses import dataclass

REPORT_KEYS = ("scene_digest", "classification", "straightening", "roots",
               "witness_lnd", "verification", "warnings", "derived_facts")


@dataclass
class Report:
    scene_digest: str
    classification: dict
    straightening: object
    roots: dict
    witness_lnd: dict
    verification: list
    warnings: list
    derived_facts: list

    def to_dict(self):
        return {key: getattr(self, key) for key in REPORT_KEYS}

    @classmethod
    def from_dict(cls, data):
        if set(data) != set(REPORT_KEYS):
            raise ValueError("report needs exactly the keys %s" % (REPORT_KEYS,))
        return cls(**{key: data[key] for key in REPORT_KEYS})


def _scalar(value):
    if value is None:
        return "none"
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _is_scalar(value):
    return value is None or isinstance(value, (str, int, bool))


def _inline(values):
    return "[" + ", ".join(_scalar(v) for v in values) + "]"


def _all_scalar(values):
    return all(_is_scalar(v) for v in values)


def _walk(value, indent, lines):
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            lines.append(pad + "(empty)")
            return
        for key, item in value.items():
            if _is_scalar(item):
                lines.append("%s%s: %s" % (pad, key, _scalar(item)))
            elif isinstance(item, list) and _all_scalar(item):
                lines.append("%s%s: %s" % (pad, key, _inline(item)))
            elif (isinstance(item, list) and item
                  and all(isinstance(x, list) and _all_scalar(x) for x in item)):
                lines.append("%s%s: %s" % (pad, key,
                                           " ".join(_inline(x) for x in item)))
            else:
                lines.append("%s%s:" % (pad, key))
                _walk(item, indent + 1, lines)
    elif isinstance(value, list):
        if not value:
            lines.append(pad + "(none)")
            return
        for item in value:
            if _is_scalar(item):
                lines.append(pad + "- " + _scalar(item))
            elif isinstance(item, list) and _all_scalar(item):
                lines.append(pad + "- " + _inline(item))
            else:
                lines.append(pad + "-")
                _walk(item, indent + 1, lines)
    else:
        lines.append(pad + _scalar(value))


def render_text(document):
    """Deterministic plain-text rendering of a JSON-plain document."""
    lines = []
    _walk(document, 0, lines)
    return "\n".join(lines) + "\n"
