"""
Instance and certificate file formats
"""

from .instance_files import (
    InstanceFile,
    load_instance,
    save_instance,
    load_certificate,
    save_certificate,
    list_instances,
)

__all__ = [
    'InstanceFile', 'load_instance', 'save_instance',
    'load_certificate', 'save_certificate', 'list_instances',
]
