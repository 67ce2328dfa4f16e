import pytest
from matplotlib import pyplot as plt


@pytest.fixture(autouse=True)
def auto_close_all_figures(request):
    """
    Closes the figures of figure comparison tests in-between tests.
    """
    if "matplotlib" in request.keywords:
        plt.close("test")
        plt.close("reference")


@pytest.fixture
def write_cloud(tmp_path):
    """
    Writes the given lines to a CSV file, and returns its path.
    """

    def write(lines, name="cloud.csv"):
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return write
