'''
This module is to benchmark crystal generation: geometric vs fast engine, cold vs warm cache.
'''
