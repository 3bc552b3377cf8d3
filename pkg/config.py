import os
from dotenv import load_dotenv

def load_config():
    load_dotenv(dotenv_path=".env.local")
    load_dotenv()
    return {
        "catalog_dir": os.getenv("RECON_CATALOG_DIR", "catalogs"),  # graph{n}c.g6 / graph{n}.g6 live here
        "max_automorphism_vertices": int(os.getenv("RECON_MAX_AUT_VERTICES", "10")),
        "max_generated_order": int(os.getenv("RECON_MAX_GENERATED_ORDER", "8")),
        "jobs": int(os.getenv("RECON_JOBS", "1")),
        "output_format": os.getenv("RECON_OUTPUT_FORMAT", "text"),
        "log_level": os.getenv("RECON_LOG_LEVEL", "INFO"),
    }
