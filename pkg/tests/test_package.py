import lietori
from lietori._version import __version__


class TestPackage:
    """
    Test the lietori package.
    """
    def test_version(self):
        """
        Test that the __version__ attribute is found on the package and that
        it matches the version in lietori/_version.py.
        """
        assert lietori.__version__ == __version__

    def test_public_api(self):
        """
        Test that the main entry points are importable from the package.
        """
        params = lietori.ConstructionParams('SP', 3)
        model = lietori.construct(params)

        assert isinstance(model, lietori.LieTorusModel)
        assert issubclass(lietori.RankExclusionError, lietori.ConstructionError)
        assert issubclass(lietori.CosetBudgetExceeded, lietori.InvariantError)
        assert issubclass(lietori.InvalidModelFile, lietori.LieToriError)
