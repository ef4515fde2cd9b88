class InlinePanel {
  JButton refresh;
  JButton close;
  Model model;

  void wire() {
    refresh = new JButton();
    refresh.addActionListener(new ActionListener() {
      public void actionPerformed(ActionEvent e) {
        model.reload();
      }
    });
    close = new JButton();
    close.addActionListener(e -> model.close());
  }
}
