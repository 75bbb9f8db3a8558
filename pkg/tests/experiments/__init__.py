"""Arboreal experiment tests"""
