"""Command-line scripts provided by the irgraph package.
"""
