"""Python bindings for the apcalc interpreter kernel."""

from ._apcalc import ProtocolHandler, Session, pi

__all__ = ["ProtocolHandler", "Session", "pi", "run"]


def run(source: str, words: int | None = None) -> list[str]:
    """Evaluate source in a fresh session and return its text outputs.

    Raises RuntimeError carrying the first error message.
    """
    session = Session()
    if words is not None:
        session.set_precision(words)
    out = []
    for tag, text in session.execute(source, stop_on_error=True):
        if tag == "error":
            raise RuntimeError(text)
        if tag == "text":
            out.append(text)
    return out
