import importlib
import inspect
import types
from typing import NamedTuple, Union, get_args, get_origin, get_type_hints

# Verb registries
_all_verbs_registry = []  # List of all verbs across all modules, in registration order
_verbs_by_name = {}  # Maps hyphenated verb name to function


class VerbOutput(NamedTuple):
    """Rendered verb result; ``ok=False`` means some check failed and the exit status is 1."""

    text: str
    ok: bool = True


def verb_name(func) -> str:
    """Workbench name of a verb function (sd_star -> 'sd-star')."""
    return func.__name__.strip("_").replace("_", "-")


def verb(func):
    """Decorator to mark functions as workbench verbs"""
    _all_verbs_registry.append(func)
    _verbs_by_name[verb_name(func)] = func
    return func


# Verb module mapping for lazy imports
VERB_MODULES = {
    "fields": "ab_core.verbs.fields",
    "building": "ab_core.verbs.building",
    "distance": "ab_core.verbs.distance",
    "reproduce": "ab_core.verbs.reproduce",
}


def ensure_verbs_loaded():
    """Ensure all verb modules are imported so verbs are registered."""
    for module_name in VERB_MODULES.values():
        importlib.import_module(module_name)


def extract_description(func) -> str:
    """Extract docstring content before Args:/Returns: as the description."""
    if not func.__doc__:
        return f"Run {verb_name(func)}"

    lines = func.__doc__.strip().split('\n')
    description_lines = []
    for line in lines:
        stripped = line.strip()
        if stripped.startswith('Args:') or stripped.startswith('Returns:'):
            break
        if stripped:
            description_lines.append(stripped)

    return ' '.join(description_lines) if description_lines else f"Run {verb_name(func)}"


def extract_parameter_help(func) -> dict[str, str]:
    """Per-parameter help text from the Args: section of the docstring."""
    help_text = {}
    in_args = False
    for line in (func.__doc__ or "").split('\n'):
        stripped = line.strip()
        if stripped.startswith('Args:'):
            in_args = True
            continue
        if stripped.startswith('Returns:'):
            break
        if in_args and ':' in stripped:
            name, desc = stripped.split(':', 1)
            if name in inspect.signature(func).parameters:
                help_text[name] = desc.strip()
    return help_text


def parameter_types(func) -> dict[str, type]:
    """Resolved parameter types, with Optional[X] and X | None unwrapped to X."""
    hints = get_type_hints(func)
    resolved = {}
    for name in inspect.signature(func).parameters:
        hint = hints.get(name, str)
        if get_origin(hint) in (Union, types.UnionType):
            non_none = [a for a in get_args(hint) if a is not type(None)]
            hint = non_none[0] if len(non_none) == 1 else str
        resolved[name] = hint
    return resolved


def call_verb(name: str, arguments: dict):
    """Execute a verb by name with provided arguments.

    Args:
        name: The hyphenated verb name (e.g., "sd-star")
        arguments: Dict of arguments to pass to the verb

    Returns:
        Result from the verb execution

    Raises:
        ValueError: If verb not found
    """
    ensure_verbs_loaded()

    key = name.lower().replace("_", "-")
    if key not in _verbs_by_name:
        raise ValueError(f"Verb '{name}' not found. Available verbs: {', '.join(_verbs_by_name)}")

    return _verbs_by_name[key](**arguments)


def get_verb_list() -> list[dict]:
    """Get list of all verbs with names and descriptions.

    Returns:
        List of dicts with 'name' and 'description' fields
    """
    ensure_verbs_loaded()

    return [
        {
            "name": verb_name(func),
            "description": extract_description(func),
        }
        for func in _all_verbs_registry
    ]
