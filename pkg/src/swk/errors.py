"""Exception types shared across the toolkit."""


class ParseError(ValueError):
    """Malformed input text or bytes (edge lists, graph6 streams)."""


class PreconditionError(ValueError):
    """Operation invoked outside its documented domain."""
