"""The Nagata automorphism, expanded and in its factored form."""
from weitzenbock.commutative import nagata_data

data = nagata_data()
for name, img in zip("xyz", data["nu"].images):
    print("nu(%s) = %s" % (name, img.to_str()))
for name, img in zip("xyz", data["displayed"]):
    print("  displayed: %s" % img)
