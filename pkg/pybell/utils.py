'''
.. Common functions used by the computational modules and the sub-commands.

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
from concurrent.futures import ThreadPoolExecutor
import hashlib
import json
import os
import pkgutil

import numpy as np

from .config import getParamAsInt
from .error import InvalidInputError

# Corners are generated and evaluated in blocks of this many rows
CORNER_CHUNK = 1 << 15


def getResource(relpath):
    """
    Extract a resource (e.g., file) from the given relative path in
    the pybell package.

    :param relpath: (str) a path relative to the pybell package
    :return: the file contents
    """
    contents = pkgutil.get_data('pybell', relpath)
    return contents.decode('utf-8')

def mkdirs(newdir, mode=0o770):
    """
    Try to create the full path `newdir` and ignore the error if it already exists.
    """
    if newdir:
        os.makedirs(newdir, mode, exist_ok=True)

def getThreads(threads=None):
    """
    Return `threads` if given, else the value of ``Bell.Threads``; never less than 1.
    """
    if threads is None:
        threads = getParamAsInt('Bell.Threads')
    return max(1, int(threads))

def cornerSigns(start, stop, n, fixFirst=False):
    """
    Return the corners of the hypercube {-1,1}**n with indices in [start, stop)
    as rows of an int8 array. Bit i of the index selects the sign of element
    n-1-i, so consecutive indices flip the last element first. If `fixFirst`
    is True, element 0 is always +1 and indices run over 2**(n-1) corners.
    """
    free = n - 1 if fixFirst else n
    idx = np.arange(start, stop, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(free, dtype=np.int64)) & 1
    signs = (1 - 2 * bits).astype(np.int8)[:, ::-1]

    if fixFirst:
        ones = np.ones((len(idx), 1), dtype=np.int8)
        signs = np.hstack([ones, signs])

    return signs

def chunkRanges(total, chunk=CORNER_CHUNK):
    return [(start, min(start + chunk, total)) for start in range(0, total, chunk)]

def mapChunks(func, total, threads=None, chunk=CORNER_CHUNK):
    """
    Apply ``func(start, stop)`` to consecutive index ranges covering
    ``range(total)`` and return the results in range order. With more than
    one thread the ranges are evaluated by a thread pool; the returned
    list is the same either way.
    """
    ranges = chunkRanges(total, chunk)
    threads = min(getThreads(threads), len(ranges)) if ranges else 1

    if threads <= 1:
        return [func(start, stop) for start, stop in ranges]

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda r: func(*r), ranges))

def asRealMatrix(data, name='matrix'):
    """
    Convert `data` to a 2-D float array, raising InvalidInputError if it
    is not 2-D or holds non-finite values.
    """
    try:
        arr = np.array(data, dtype=float)
    except (TypeError, ValueError) as e:
        raise InvalidInputError("%s is not a real matrix: %s" % (name, e))

    if arr.ndim != 2:
        raise InvalidInputError("%s must be 2-dimensional, got shape %s" % (name, arr.shape))

    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("%s has non-finite entries" % name)

    return arr

def canonicalJson(obj):
    return json.dumps(obj, sort_keys=True, separators=(',', ':'))

def configHash(obj):
    """
    Return the SHA-256 digest of the canonical JSON form of `obj`.
    """
    return hashlib.sha256(canonicalJson(obj).encode('utf-8')).hexdigest()

def fmt17(value):
    """
    Format a float with 17 significant digits, enough to round-trip a double.
    """
    return '%.17g' % value
