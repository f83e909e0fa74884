def test_import():
    import isoext  # noqa: F401
