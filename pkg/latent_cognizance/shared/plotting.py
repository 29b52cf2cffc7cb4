"""
Deterministic SVG output through matplotlib. matplotlib is only imported when a figure is requested.
"""
import io

from .helpers import write_text_atomic

SVG_HASH_SALT = 'latent_cognizance'


def new_figure(rows: int = 1, columns: int = 1, width: float = 6.4, height: float = 4.8):
    import matplotlib
    matplotlib.use('Agg')
    from matplotlib import pyplot as plt
    matplotlib.rcParams['svg.hashsalt'] = SVG_HASH_SALT
    return plt.subplots(rows, columns, figsize=(width, height), squeeze=False)


def save_svg(figure, path: str):
    """
    Saves `figure` as SVG without a creation date, so identical figures produce identical files, and closes it.
    """
    from matplotlib import pyplot as plt
    buffer = io.StringIO()
    figure.savefig(buffer, format='svg', metadata={'Date': None})
    plt.close(figure)
    write_text_atomic(path, buffer.getvalue())
