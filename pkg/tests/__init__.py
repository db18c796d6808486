"""Test suite for uniprior-coder."""
