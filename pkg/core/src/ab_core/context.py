import os
from contextvars import ContextVar
from typing import Optional

# Environment defaults (overridable per process)
FIELD_SIZE_CAP = int(os.environ.get('ABELIAN_FIELD_SIZE_CAP', str(2**32)))
MSD_ORBIT_CAP = int(os.environ.get('ABELIAN_MSD_ORBIT_CAP', '22'))
ENUMERATION_CAP = int(os.environ.get('ABELIAN_ENUMERATION_CAP', str(2**24)))

# Context variables for per-invocation overrides
msd_cap_context: ContextVar[Optional[int]] = ContextVar('msd_cap', default=None)
enumeration_cap_context: ContextVar[Optional[int]] = ContextVar('enumeration_cap', default=None)


def set_msd_cap(cap: Optional[int]) -> None:
    """Set the free-orbit cap for msd enumeration in the current context."""
    msd_cap_context.set(cap)


def get_msd_cap(cap: Optional[int] = None) -> int:
    """Resolve the msd cap: explicit argument, then context, then environment default."""
    if cap is not None:
        return cap
    return msd_cap_context.get() or int(os.environ.get('ABELIAN_MSD_ORBIT_CAP', str(MSD_ORBIT_CAP)))


def set_enumeration_cap(cap: Optional[int]) -> None:
    """Set the message-space cap for exhaustive distance in the current context."""
    enumeration_cap_context.set(cap)


def get_enumeration_cap(cap: Optional[int] = None) -> int:
    """Resolve the enumeration cap: explicit argument, then context, then environment default."""
    if cap is not None:
        return cap
    return enumeration_cap_context.get() or int(os.environ.get('ABELIAN_ENUMERATION_CAP', str(ENUMERATION_CAP)))


def get_field_size_cap() -> int:
    """Largest field order the library will construct."""
    return int(os.environ.get('ABELIAN_FIELD_SIZE_CAP', str(FIELD_SIZE_CAP)))
