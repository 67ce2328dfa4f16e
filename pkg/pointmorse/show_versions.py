import sys
from importlib.metadata import PackageNotFoundError, version
from typing import List, Tuple

_PACKAGES = ("pointmorse", "numpy", "matplotlib")


def installed_versions() -> List[Tuple[str, str]]:
    """
    Returns (name, version) pairs for ``pointmorse``, its runtime
    dependencies, and Python. Packages without installed metadata, such as a
    source checkout that was never installed, are reported as
    ``"not installed"``.
    """
    versions = []

    for name in _PACKAGES:
        try:
            versions.append((name, version(name)))
        except PackageNotFoundError:
            versions.append((name, "not installed"))

    versions.append(("Python", ".".join(map(str, sys.version_info[:3]))))
    return versions


def show_versions():
    """
    Prints version information that is useful when filing bug reports, for
    example about a point cloud that is classified differently in exact and
    float mode.

    Examples
    --------
    Calling this function should print information like the following
    (dependency versions in your local installation will likely differ):

    >>> import pointmorse
    >>> pointmorse.show_versions()
    INSTALLED VERSIONS
    ------------------
    pointmorse: 0.1.0
         numpy: 1.26.4
    matplotlib: 3.8.2
        Python: 3.11.6
    """
    versions = installed_versions()
    width = max(len(name) for name, _ in versions)

    print("INSTALLED VERSIONS")
    print("------------------")

    for name, installed in versions:
        print(f"{name:>{width}}: {installed}")
