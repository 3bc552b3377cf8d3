from .enumerate import (
    DEFAULT_MAX_GENERATED_ORDER,
    GraphCatalog,
    atlas_graphs,
    catalog_path,
    enumerate_graphs,
    load_catalog,
)


def get_catalog(config, n, connected_only=False, source="auto"):
    """Pick a catalog for order n: a file from catalog_dir if present, else generation."""
    if source == "file" or source == "auto":
        path = catalog_path(config["catalog_dir"], n, connected_only)
        if path.exists():
            return load_catalog(path, connected_only)
        if source == "file":
            raise FileNotFoundError(f"no catalog file at {path}")
        source = "generated"
    if source == "generated":
        return enumerate_graphs(n, connected_only, max_order=config.get("max_generated_order", DEFAULT_MAX_GENERATED_ORDER))
    if source == "atlas":
        return atlas_graphs(n, connected_only)
    raise ValueError(f"Unsupported catalog source: {source}")


__all__ = ["GraphCatalog", "get_catalog", "enumerate_graphs", "load_catalog", "atlas_graphs", "catalog_path"]
