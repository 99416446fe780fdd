"""
ElastiNet Application Core
File: app/__init__.py
Created: 2025-09-02
Purpose: Elastic networks of curves with prescribed junction angles
Modular monolith: graph_core, classify, geometry, optimize and analysis, with the
command line in gateway and cross-cutting pieces in shared_kernel.
"""

__version__ = "0.1.0"
__description__ = "Classification, minimization and analysis of elastic networks"
