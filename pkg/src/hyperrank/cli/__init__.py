"""
Package containing functions called by the hyperrank cli.

Built using third party package Typer.
"""
