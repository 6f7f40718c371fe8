"""Exception types shared across the package."""


class MalformedInputError(ValueError):
    """Edge list or graph data that cannot be interpreted."""


class ContractError(ValueError):
    """A caller violated a documented precondition."""


class CapacityError(RuntimeError):
    """A configured size or work budget would be exceeded."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates an enumeration bug."""
