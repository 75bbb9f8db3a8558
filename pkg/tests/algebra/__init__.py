"""Arboreal algebra tests"""
