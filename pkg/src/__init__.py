# readcodes package
