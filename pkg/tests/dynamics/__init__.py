"""Arboreal dynamics tests"""
