# vim: ts=4:sw=4:expandtabs
