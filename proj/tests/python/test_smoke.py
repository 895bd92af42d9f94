def test_import():
    import voltage_ocr  # noqa
