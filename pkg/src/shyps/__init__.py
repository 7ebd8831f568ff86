"""Compiler and verification toolkit for SHYPS subsystem quantum LDPC codes."""

__version__ = "0.1.0"
