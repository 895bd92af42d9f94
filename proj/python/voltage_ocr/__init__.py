from voltage_ocr import _core  # noqa
