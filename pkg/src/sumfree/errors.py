class ResourceLimitError(RuntimeError):
    """Raised when a request exceeds a configured enumeration ceiling."""
