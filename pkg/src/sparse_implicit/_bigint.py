"""Big-integer backend: gmpy2 when available, Python ints otherwise.

Set ``SPARSE_IMPLICIT_NO_GMPY=1`` to force plain ints.
"""

import math
import os

HAVE_GMPY2 = False
mpz = int
igcd = math.gcd

if not os.environ.get("SPARSE_IMPLICIT_NO_GMPY"):
    try:
        import gmpy2
    except ImportError:  # pragma: no cover - optional dependency
        pass
    else:
        HAVE_GMPY2 = True
        mpz = gmpy2.mpz
        igcd = gmpy2.gcd
