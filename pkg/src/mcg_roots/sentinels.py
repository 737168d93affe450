"""Singleton markers shared across modules."""


class _Marker:
    __slots__ = ("_name",)

    def __init__(self, name):
        self._name = name

    def __repr__(self):
        return self._name

    def __reduce__(self):
        return (_lookup, (self._name,))


INFINITE = _Marker("Infinite")
NOT_FOUND = _Marker("NotFound")

_REGISTRY = {"Infinite": INFINITE, "NotFound": NOT_FOUND}


def _lookup(name):
    return _REGISTRY[name]
