try:
    # installed layout: the extension lives inside the package
    from ._museq import *  # noqa: F401,F403
except ImportError:
    # build-tree layout: the extension is importable as top-level _museq
    from _museq import *  # noqa: F401,F403
