"""
Password display for exports and reports.

Passwords are raw bytes. Text outputs (XML, CSV, DOT, JSON) need a str, so:
- valid UTF-8 is shown as text,
- invalid bytes become \\xNN,
- control characters, the backslash and the XML-illegal U+FFFE/U+FFFF become
  \\xNN, \\uNNNN or \\n-style escapes.

A backslash in a label always starts an escape and is never followed by a quote,
so labels go into XML, CSV and DOT strings without format-specific handling.
"""
_ESCAPES = {"\\": "\\x5c", "\n": "\\n", "\r": "\\r", "\t": "\\t"}


def display_password(password: bytes) -> str:
    text = password.decode("utf-8", errors="surrogateescape")
    out = []
    for ch in text:
        code = ord(ch)
        if ch in _ESCAPES:
            out.append(_ESCAPES[ch])
        elif 0xDC80 <= code <= 0xDCFF:
            # undecodable byte smuggled through surrogateescape
            out.append(f"\\x{code - 0xDC00:02x}")
        elif code < 0x20 or code == 0x7F:
            out.append(f"\\x{code:02x}")
        elif 0x80 <= code < 0xA0 or code in (0xFFFE, 0xFFFF):
            out.append(f"\\u{code:04x}")
        else:
            out.append(ch)
    return "".join(out)


def node_label(node_id: int, password: bytes, redact: bool = False) -> str:
    """The password itself, or the node id when redacting."""
    if redact:
        return str(node_id)
    return display_password(password)
