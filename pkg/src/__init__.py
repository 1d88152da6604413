# Path: src/__init__.py
