"""Arboreal wreath product tests"""
