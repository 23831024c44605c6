from typing import Callable, Dict, List


def get_entry_metadata(func: Callable, name: str = None, description: str = None, tags: List[str] = None,
                       **extra) -> dict:
    """
    Extracts metadata for a function registered in one of the catalogs
    (predicates, propagators, gadget families, suites).

    Parameters:
        func (function): The function to register.
        name (str, optional): Catalog name. Defaults to the function name with underscores turned into dashes.
        description (str, optional): Defaults to the first line of the function's docstring.
        tags (List[str], optional): Tags used to filter the catalog.
        **extra: Catalog-specific fields stored alongside.

    Returns:
        dict: name, description, function, tags and the extra fields.
    """
    name = name or func.__name__.replace("_", "-")

    if description is None:
        doc = (func.__doc__ or "").strip()
        description = doc.splitlines()[0] if doc else "No description provided."

    return {
        "name": name,
        "description": description,
        "function": func,
        "tags": list(tags or []),
        **extra,
    }


def add_entry(catalog: Dict[str, dict], by_tag: Dict[str, List[str]], metadata: dict):
    if metadata["name"] in catalog:
        raise ValueError(f"Duplicate registration: {metadata['name']}")
    catalog[metadata["name"]] = metadata
    for tag in metadata["tags"]:
        by_tag.setdefault(tag, []).append(metadata["name"])


def make_register(catalog: Dict[str, dict], by_tag: Dict[str, List[str]]):
    """Build a registration decorator bound to one catalog"""
    def register(name: str = None, description: str = None, tags: List[str] = None, **extra):
        def decorator(func):
            metadata = get_entry_metadata(func, name=name, description=description, tags=tags, **extra)
            add_entry(catalog, by_tag, metadata)
            return func
        return decorator
    return register


def select(catalog: Dict[str, dict], tags: List[str] = None, names: List[str] = None) -> List[dict]:
    """Filter catalog entries by tag and name, in registration order"""
    selected = []
    for entry_name, entry in catalog.items():
        if names and entry_name not in names:
            continue
        if tags and not any(tag in entry["tags"] for tag in tags):
            continue
        selected.append(entry)
    return selected
