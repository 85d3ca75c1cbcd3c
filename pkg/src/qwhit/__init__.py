"""qwhit: exact computer algebra for q-Whittaker symmetric functions.

Everything is exact arithmetic over ZZ[q,t] / QQ(q,t); there is no floating
point anywhere in the computational core.
"""

__version__ = "0.1.0"
