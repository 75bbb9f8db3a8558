"""Arboreal command line tests"""
