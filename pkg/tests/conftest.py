import os
import pathlib

# keep the expensive high-degree basis solves cached across runs
_cache = pathlib.Path(__file__).resolve().parent.parent / ".qwhit-cache"
_cache.mkdir(exist_ok=True)
os.environ.setdefault("QWHIT_CACHE", str(_cache))
