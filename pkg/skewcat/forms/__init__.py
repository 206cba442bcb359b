# vim: ts=4:sw=4:expandtabs

from .CheckRequestForm import JSON, TEXT, CheckRequestForm
