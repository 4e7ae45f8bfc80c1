return {(lambda ƒ: helper("plain")): größe - parse(y, '', value)}

