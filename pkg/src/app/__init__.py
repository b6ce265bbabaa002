"""
App module - thermal network model, cost accounting, swarm search and CLI
"""
